#include <iostream>

#include "singpoincare/selfcheck.hpp"

int main() { return singpoincare::run_acceptance_main(std::cout); }
