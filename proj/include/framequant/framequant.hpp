// framequant.hpp — Umbrella header

#pragma once

#include "framequant/cahill_glauber.hpp"
#include "framequant/check_suite.hpp"
#include "framequant/errors.hpp"
#include "framequant/fock.hpp"
#include "framequant/frame_engine.hpp"
#include "framequant/grid.hpp"
#include "framequant/group_rep.hpp"
#include "framequant/hs_frame.hpp"
#include "framequant/operator_space.hpp"
#include "framequant/point_set.hpp"
#include "framequant/random.hpp"
#include "framequant/tolerances.hpp"
#include "framequant/wigner_weyl.hpp"
