#include <doctest.h>

TEST_SUITE("sensing") {}
