#include "vertexlab/kasteleyn.hpp"
