#ifndef OSDMA_OSDMA_HPP
#define OSDMA_OSDMA_HPP

#include "osdma/channel.hpp"
#include "osdma/combining.hpp"
#include "osdma/estimate.hpp"
#include "osdma/experiments.hpp"
#include "osdma/extreme_value.hpp"
#include "osdma/linalg.hpp"
#include "osdma/monte_carlo.hpp"
#include "osdma/quadrature.hpp"
#include "osdma/rng.hpp"
#include "osdma/schedule.hpp"
#include "osdma/sinr_model.hpp"
#include "osdma/system.hpp"
#include "osdma/throughput.hpp"

#endif  // OSDMA_OSDMA_HPP
