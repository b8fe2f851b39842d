#ifndef MIG_TESTS_DOCTEST_MAIN_HPP
#define MIG_TESTS_DOCTEST_MAIN_HPP
#include "doctest.h"
#endif
