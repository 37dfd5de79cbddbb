#ifndef ROOTGEO_ROOTGEO_HPP
#define ROOTGEO_ROOTGEO_HPP

#include "rootgeo/rational.hpp"
#include "rootgeo/surd.hpp"
#include "rootgeo/poly.hpp"
#include "rootgeo/roots.hpp"
#include "rootgeo/sturm.hpp"
#include "rootgeo/sequence.hpp"
#include "rootgeo/landmarks.hpp"
#include "rootgeo/isolate.hpp"
#include "rootgeo/signs.hpp"
#include "rootgeo/convergence.hpp"
#include "rootgeo/verify.hpp"
#include "rootgeo/report.hpp"

#endif
