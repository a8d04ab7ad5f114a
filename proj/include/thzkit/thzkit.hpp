#pragma once

// Umbrella header for the thzkit library (the CLI lives in thzkit/cli.hpp).

#include "thzkit/antenna.hpp"
#include "thzkit/config.hpp"
#include "thzkit/errors.hpp"
#include "thzkit/gating.hpp"
#include "thzkit/hypersurface.hpp"
#include "thzkit/linkbudget.hpp"
#include "thzkit/materials.hpp"
#include "thzkit/output.hpp"
#include "thzkit/parallel.hpp"
#include "thzkit/plasmonics.hpp"
#include "thzkit/quantities.hpp"
#include "thzkit/sweep.hpp"
