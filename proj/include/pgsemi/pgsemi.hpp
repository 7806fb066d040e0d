#pragma once

#include "boset.hpp"
#include "chain_semigroup.hpp"
#include "chains.hpp"
#include "complex.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "group.hpp"
#include "io.hpp"
#include "presentations.hpp"
#include "projection_algebra.hpp"
#include "sources.hpp"
#include "star_semigroup.hpp"
