#pragma once

#include "gmlag/correspondence.hpp"
#include "gmlag/epw.hpp"
#include "gmlag/error.hpp"
#include "gmlag/exterior.hpp"
#include "gmlag/fibrations.hpp"
#include "gmlag/fixtures.hpp"
#include "gmlag/gm_data.hpp"
#include "gmlag/invariants.hpp"
#include "gmlag/io.hpp"
#include "gmlag/matrix.hpp"
#include "gmlag/polynomial.hpp"
#include "gmlag/quadric.hpp"
#include "gmlag/rational.hpp"
#include "gmlag/subspace.hpp"
#include "gmlag/symplectic.hpp"
