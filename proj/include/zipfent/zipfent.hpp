#pragma once

#include "zipfent/compare.hpp"
#include "zipfent/compensated_sum.hpp"
#include "zipfent/corpus.hpp"
#include "zipfent/entropy.hpp"
#include "zipfent/error.hpp"
#include "zipfent/fit.hpp"
#include "zipfent/format.hpp"
#include "zipfent/good_turing.hpp"
#include "zipfent/monkey.hpp"
#include "zipfent/text.hpp"
#include "zipfent/zipf.hpp"
