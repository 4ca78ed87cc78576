#pragma once

#include "fibdiv/fib.hpp"
#include "fibdiv/periods.hpp"
#include "fibdiv/divisibility.hpp"
#include "fibdiv/sequences.hpp"
#include "fibdiv/verify.hpp"
