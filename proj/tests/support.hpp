#pragma once

#include <doctest.h>

#include "rado/errors.hpp"

// assert that an expression throws a rado::Error with a specific code
#define CHECK_RADO_ERROR(expr, expected_code)                                                                          \
  do {                                                                                                                 \
    bool threw_ = false;                                                                                               \
    try {                                                                                                              \
      (void)(expr);                                                                                                    \
    } catch (const rado::Error& e_) {                                                                                  \
      threw_ = true;                                                                                                   \
      CHECK_MESSAGE(e_.code() == (expected_code), e_.what());                                                          \
    }                                                                                                                  \
    CHECK_MESSAGE(threw_, "expected " << rado::error_code_name(expected_code));                                        \
  } while (0)
