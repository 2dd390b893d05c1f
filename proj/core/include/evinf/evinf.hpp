#pragma once

#include "evinf/belief.hpp"
#include "evinf/errors.hpp"
#include "evinf/evaluate.hpp"
#include "evinf/fusion.hpp"
#include "evinf/graph.hpp"
#include "evinf/io.hpp"
#include "evinf/maximize.hpp"
#include "evinf/spread.hpp"
