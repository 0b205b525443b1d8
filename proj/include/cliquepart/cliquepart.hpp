#pragma once

#include "cliquepart/bounds.hpp"
#include "cliquepart/combinatorics.hpp"
#include "cliquepart/conic_family.hpp"
#include "cliquepart/curve_family.hpp"
#include "cliquepart/design.hpp"
#include "cliquepart/design_io.hpp"
#include "cliquepart/error.hpp"
#include "cliquepart/exact_search.hpp"
#include "cliquepart/finite_field.hpp"
#include "cliquepart/inversive_plane.hpp"
#include "cliquepart/surd.hpp"
#include "cliquepart/witt_designs.hpp"
#include "cliquepart/zarankiewicz.hpp"
