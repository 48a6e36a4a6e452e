#pragma once

#include "tempcom/community.hpp"
#include "tempcom/e2d2_test.hpp"
#include "tempcom/error.hpp"
#include "tempcom/evalue.hpp"
#include "tempcom/generators.hpp"
#include "tempcom/graph.hpp"
#include "tempcom/harness.hpp"
#include "tempcom/lanczos.hpp"
#include "tempcom/rng.hpp"
#include "tempcom/spectral_test.hpp"
#include "tempcom/temporal_test.hpp"
#include "tempcom/tw1.hpp"
