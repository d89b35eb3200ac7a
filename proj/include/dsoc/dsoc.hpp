#pragma once

#include "dsoc/capacity.hpp"
#include "dsoc/config.hpp"
#include "dsoc/designer.hpp"
#include "dsoc/detector.hpp"
#include "dsoc/errors.hpp"
#include "dsoc/link_budget.hpp"
#include "dsoc/montecarlo.hpp"
#include "dsoc/noise.hpp"
#include "dsoc/oam.hpp"
#include "dsoc/pipeline.hpp"
#include "dsoc/ppm_channel.hpp"
#include "dsoc/preset.hpp"
#include "dsoc/quantities.hpp"
#include "dsoc/scenarios.hpp"
