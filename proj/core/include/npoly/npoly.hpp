#pragma once

// Umbrella header.

#include "npoly/bounds.hpp"
#include "npoly/error.hpp"
#include "npoly/heights.hpp"
#include "npoly/json_io.hpp"
#include "npoly/matrix.hpp"
#include "npoly/polygon.hpp"
#include "npoly/rational.hpp"
#include "npoly/sequences.hpp"
