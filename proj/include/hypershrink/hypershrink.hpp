#pragma once

#include "core.hpp"
#include "dot.hpp"
#include "gen.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "orientation.hpp"
#include "rainbow.hpp"
#include "recognition.hpp"
#include "report.hpp"
#include "shrink.hpp"
#include "union_find.hpp"
