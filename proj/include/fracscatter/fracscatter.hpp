#pragma once

#include "config.hpp"
#include "diagnostics.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "fft.hpp"
#include "format.hpp"
#include "grid.hpp"
#include "parallel.hpp"
#include "params.hpp"
#include "propagators.hpp"
#include "schedule.hpp"
#include "symbols.hpp"
#include "wave_field.hpp"
#include "wavepacket.hpp"
