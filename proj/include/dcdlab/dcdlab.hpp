#ifndef DCDLAB_DCDLAB_HPP
#define DCDLAB_DCDLAB_HPP

#include "dcdlab/calibrate.hpp"
#include "dcdlab/config.hpp"
#include "dcdlab/constructions.hpp"
#include "dcdlab/energy.hpp"
#include "dcdlab/errors.hpp"
#include "dcdlab/fit.hpp"
#include "dcdlab/ground_set.hpp"
#include "dcdlab/io.hpp"
#include "dcdlab/numeric.hpp"
#include "dcdlab/proofscope.hpp"
#include "dcdlab/record.hpp"
#include "dcdlab/rng.hpp"
#include "dcdlab/runners.hpp"
#include "dcdlab/search.hpp"
#include "dcdlab/seeded.hpp"

#endif  // DCDLAB_DCDLAB_HPP
