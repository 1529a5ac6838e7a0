#pragma once

#include "vertexlab/weights.hpp"
