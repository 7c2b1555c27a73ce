#pragma once

#include "error.hpp"
#include "scalar.hpp"
#include "poly.hpp"
#include "linalg.hpp"
#include "diagram.hpp"
#include "element.hpp"
#include "closure.hpp"
#include "drawing.hpp"
#include "decompose.hpp"
#include "specht.hpp"
#include "half_diagram.hpp"
#include "cells.hpp"
#include "algebra.hpp"
#include "tower.hpp"
