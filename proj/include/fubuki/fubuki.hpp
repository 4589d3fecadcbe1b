#pragma once

#include "fubuki/census.hpp"
#include "fubuki/core.hpp"
#include "fubuki/generator.hpp"
#include "fubuki/io.hpp"
#include "fubuki/random.hpp"
#include "fubuki/solver.hpp"
#include "fubuki/theory.hpp"
