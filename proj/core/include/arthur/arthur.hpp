#pragma once

#include "arthur/cuspidal.hpp"
#include "arthur/error.hpp"
#include "arthur/glconstraints.hpp"
#include "arthur/halfint.hpp"
#include "arthur/induction.hpp"
#include "arthur/multisegment.hpp"
#include "arthur/nv_pair.hpp"
#include "arthur/segments.hpp"
#include "arthur/sequences.hpp"
#include "arthur/unitarity.hpp"
#include "arthur/version.hpp"
