#pragma once

// Umbrella header.

#include "wog/vertex_set.hpp"
#include "wog/errors.hpp"
#include "wog/graph.hpp"
#include "wog/covers.hpp"
#include "wog/matching.hpp"
#include "wog/criteria.hpp"
#include "wog/oracle.hpp"
#include "wog/io.hpp"
#include "wog/report.hpp"
