#pragma once

#include "combinatorics.hpp"
#include "formulas.hpp"
#include "label.hpp"
#include "oracle.hpp"
#include "orbit.hpp"
#include "weight.hpp"
