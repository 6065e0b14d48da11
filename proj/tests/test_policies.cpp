#include <doctest.h>

TEST_SUITE("policies") {}
