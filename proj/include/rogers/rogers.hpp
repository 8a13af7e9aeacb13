#pragma once

#include "rogers/ai_policies.hpp"
#include "rogers/analytics.hpp"
#include "rogers/config.hpp"
#include "rogers/csv.hpp"
#include "rogers/engine.hpp"
#include "rogers/error.hpp"
#include "rogers/feedback.hpp"
#include "rogers/figures.hpp"
#include "rogers/model.hpp"
#include "rogers/params_io.hpp"
#include "rogers/presets.hpp"
#include "rogers/rng.hpp"
#include "rogers/strategies.hpp"
#include "rogers/sweeps.hpp"
