#pragma once

#include "shrubs/anticyclic.hpp"
#include "shrubs/canonical.hpp"
#include "shrubs/enumerate.hpp"
#include "shrubs/error.hpp"
#include "shrubs/fraction.hpp"
#include "shrubs/genword.hpp"
#include "shrubs/label.hpp"
#include "shrubs/mould.hpp"
#include "shrubs/operad.hpp"
#include "shrubs/polynomial.hpp"
#include "shrubs/rational.hpp"
#include "shrubs/reconstruction.hpp"
#include "shrubs/shrub.hpp"
#include "shrubs/substitution.hpp"
#include "shrubs/zinbiel.hpp"
