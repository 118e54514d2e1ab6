#pragma once

#include "gsync/bounds.hpp"
#include "gsync/estimators.hpp"
#include "gsync/experiment.hpp"
#include "gsync/graph.hpp"
#include "gsync/group.hpp"
#include "gsync/rng.hpp"
#include "gsync/selfcheck.hpp"
#include "gsync/sync_model.hpp"
