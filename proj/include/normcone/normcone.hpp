#pragma once

// Umbrella header: the whole library.

#include "normcone/integers.hpp"
#include "normcone/verdict.hpp"
#include "normcone/hvector.hpp"
#include "normcone/hilbert.hpp"
#include "normcone/report.hpp"
#include "normcone/semigroup.hpp"
#include "normcone/zariski.hpp"
#include "normcone/oracle.hpp"
#include "normcone/sweep.hpp"
