#pragma once

#include "uqgl/error.hpp"
#include "uqgl/coeff.hpp"
#include "uqgl/rings.hpp"
#include "uqgl/fock.hpp"
#include "uqgl/weyl.hpp"
#include "uqgl/presentation.hpp"
#include "uqgl/realize.hpp"
#include "uqgl/mutations.hpp"
#include "uqgl/verify.hpp"
#include "uqgl/analyze.hpp"
#include "uqgl/expr_parser.hpp"
#include "uqgl/export.hpp"
