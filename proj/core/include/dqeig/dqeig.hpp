#pragma once

#include "dqeig/dual_number.hpp"
#include "dqeig/dual_quaternion.hpp"
#include "dqeig/error.hpp"
#include "dqeig/experiments.hpp"
#include "dqeig/givens.hpp"
#include "dqeig/io.hpp"
#include "dqeig/matrix.hpp"
#include "dqeig/metrics.hpp"
#include "dqeig/oracle.hpp"
#include "dqeig/quaternion.hpp"
#include "dqeig/solver.hpp"
