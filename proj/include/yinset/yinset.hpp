#pragma once

#include "yinset/boolean.hpp"
#include "yinset/curve.hpp"
#include "yinset/geom.hpp"
#include "yinset/io.hpp"
#include "yinset/oracle.hpp"
#include "yinset/spadjor.hpp"
#include "yinset/sweep.hpp"
