#ifndef GRCAYLEY_GRCAYLEY_HPP
#define GRCAYLEY_GRCAYLEY_HPP

#include "analysis.hpp"
#include "cayley.hpp"
#include "report.hpp"
#include "ring.hpp"
#include "spectrum.hpp"

#endif  // GRCAYLEY_GRCAYLEY_HPP
