#pragma once

#include "gitstrat/rational.hpp"
#include "gitstrat/linalg.hpp"
#include "gitstrat/combinadic.hpp"
#include "gitstrat/case_catalog.hpp"
#include "gitstrat/weyl_action.hpp"
#include "gitstrat/orbit_sieve.hpp"
#include "gitstrat/beta_solver.hpp"
#include "gitstrat/stratifier.hpp"
#include "gitstrat/golden.hpp"
#include "gitstrat/serialize.hpp"
#include "gitstrat/pipeline.hpp"
