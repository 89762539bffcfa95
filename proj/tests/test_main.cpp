#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "horncert/selftest.hpp"

int main(int argc, char** argv) {
    horncert::selftest::require();
    return doctest::Context(argc, argv).run();
}
