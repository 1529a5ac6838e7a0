#include "vertexlab/atlas.hpp"
