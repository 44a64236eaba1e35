#ifndef HYPERLAB_TESTS_HELPERS_HPP
#define HYPERLAB_TESTS_HELPERS_HPP

#include <hyperlab/error.hpp>

#include <ostream>

#include <doctest.h>

#define CHECK_ERROR(expr, expected_code)                                         \
    do {                                                                         \
        bool thrown_ = false;                                                    \
        try {                                                                    \
            (void)(expr);                                                        \
        } catch (const ::hyperlab::Error& e_) {                                  \
            thrown_ = true;                                                      \
            CHECK_MESSAGE(e_.code() == (expected_code), e_.what());              \
        }                                                                        \
        CHECK_MESSAGE(thrown_, "expected " #expected_code " from " #expr);       \
    } while (0)

#endif  // HYPERLAB_TESTS_HELPERS_HPP
