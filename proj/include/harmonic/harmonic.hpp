#ifndef HARMONIC_HARMONIC_HPP
#define HARMONIC_HARMONIC_HPP

// Everything in one include.

#include "harmonic/error.hpp"
#include "harmonic/group.hpp"
#include "harmonic/function.hpp"
#include "harmonic/characters.hpp"
#include "harmonic/spectral.hpp"
#include "harmonic/norms.hpp"
#include "harmonic/random.hpp"
#include "harmonic/interpolation.hpp"
#include "harmonic/conv_operator.hpp"
#include "harmonic/measures.hpp"
#include "harmonic/io.hpp"
#include "harmonic/suite.hpp"

#endif  // HARMONIC_HARMONIC_HPP
