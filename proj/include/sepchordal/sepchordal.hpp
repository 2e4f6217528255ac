#pragma once

#include "vertex_set.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "chordal.hpp"
#include "separators.hpp"
#include "patterns.hpp"
#include "enumerate.hpp"
#include "verify.hpp"
#include "serialize.hpp"
