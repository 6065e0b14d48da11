#include <doctest.h>

TEST_SUITE("qlearning") {}
