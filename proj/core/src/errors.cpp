#include "posetpoly/errors.hpp"
