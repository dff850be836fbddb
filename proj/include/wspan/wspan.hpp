#pragma once

#include "wspan/bench.hpp"
#include "wspan/emulator.hpp"
#include "wspan/fast_2w.hpp"
#include "wspan/generators.hpp"
#include "wspan/graph.hpp"
#include "wspan/greedy.hpp"
#include "wspan/io.hpp"
#include "wspan/light_init.hpp"
#include "wspan/rng.hpp"
#include "wspan/shortest_paths.hpp"
#include "wspan/spanner.hpp"
#include "wspan/verify.hpp"
