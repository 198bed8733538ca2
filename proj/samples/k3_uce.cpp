// Builds the universal central extension of K3(mu) and prints its structure.

#include "hla/builtin.hpp"
#include "hla/document.hpp"
#include "hla/uce.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    hla::Scalar mu = argc > 1 ? hla::parse_scalar(argv[1]) : hla::Scalar(2);
    hla::HomLieAntialgebra a = hla::k3(mu);
    hla::UceResult u = hla::build_uce(a);
    std::cout << hla::emit_algebra(u.uce_algebra);
    hla::Report r = hla::verify_uce(u);
    for (const auto& c : r.checks) std::cout << "# " << c.name << ": " << hla::to_string(c.status) << "\n";
    std::cout << "# kernel of u: " << u.kernel_of_u.dim() << "\n";
    return r.passed() ? 0 : 1;
}
