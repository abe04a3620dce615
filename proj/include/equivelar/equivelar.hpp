#ifndef EQUIVELAR_EQUIVELAR_HPP
#define EQUIVELAR_EQUIVELAR_HPP

#include "equivelar/complex.hpp"
#include "equivelar/constructions.hpp"
#include "equivelar/error.hpp"
#include "equivelar/graph.hpp"
#include "equivelar/io.hpp"
#include "equivelar/report.hpp"
#include "equivelar/surface.hpp"
#include "equivelar/symmetry.hpp"

#endif // EQUIVELAR_EQUIVELAR_HPP
