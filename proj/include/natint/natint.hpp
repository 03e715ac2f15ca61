#pragma once

#include "natint/error.hpp"
#include "natint/scalar.hpp"
#include "natint/interval.hpp"
#include "natint/structure.hpp"
#include "natint/analyzer.hpp"
#include "natint/ideals.hpp"
#include "natint/matrix.hpp"
#include "natint/poly.hpp"
#include "natint/spec.hpp"
#include "natint/expr.hpp"
#include "natint/book.hpp"
#include "natint/report.hpp"
#include "natint/config.hpp"
