#include "linkinv/knotlib.hpp"
