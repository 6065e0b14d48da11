#include <doctest.h>

TEST_SUITE("analytics") {}
