#include "ecg/graph.hpp"
