// Effective cone, nef cone and an h^1 certificate for one rank-2 K3 lattice.

#include <cicy/cicy.hpp>

#include <iostream>

int main() {
    cicy::GramForm f(6, 19, 48);
    cicy::ConeDesc cone = cicy::effective_cone(f);
    std::cout << "NE:  " << cone.ray_left->cls << ", " << cone.ray_right->cls << "\n";
    std::cout << "Nef: " << *cone.nef_left << ", " << *cone.nef_right << "\n";

    cicy::DivClass d{5, -1};
    cicy::H1Certificate cert = cicy::h1_with_cone(f, cone, d);
    std::cout << "h^1(" << d << "): " << cicy::to_string(cert.verdict) << " (" << cicy::to_string(cert.reason)
              << ")\n";
}
