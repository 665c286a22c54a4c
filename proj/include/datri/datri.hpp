#pragma once

#include "datri/exactmath.hpp"
#include "datri/triangle.hpp"
#include "datri/bisector.hpp"
#include "datri/family.hpp"
#include "datri/oracle.hpp"
