#pragma once

#include "hbn/arith.hpp"
#include "hbn/blocks.hpp"
#include "hbn/complexity.hpp"
#include "hbn/core.hpp"
#include "hbn/errors.hpp"
#include "hbn/eval.hpp"
#include "hbn/mul.hpp"
#include "hbn/natural.hpp"
#include "hbn/oracle.hpp"
#include "hbn/stats.hpp"
#include "hbn/text.hpp"
#include "hbn/tree.hpp"
