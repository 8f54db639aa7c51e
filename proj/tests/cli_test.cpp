#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

int main() { return 0; }
