// Builds a GRS code over GF(9), converts it to an EGRS descriptor and back,
// and verifies that all three generate the same subspace.

#include <iostream>

#include "grs/grs.hpp"

int main() {
    grs::FieldPtr f9 = grs::Field::make(3, 2);
    std::cout << "field: q=" << f9->order() << ", reduction coefficients:";
    for (auto c : f9->reduction()) std::cout << ' ' << c;
    std::cout << "\n";

    grs::GrsCode code(f9, 3,
                      {f9->element(1), f9->element(2), f9->element(4), f9->element(0)},
                      {f9->element(1), f9->element(5), f9->element(2), f9->element(1)});
    std::cout << "grs code: n=" << code.n() << " k=" << code.dim() << "\n";

    grs::EgrsCode as_egrs = grs::grs_to_egrs(code);
    std::cout << "as egrs:  " << grs::canonical_json(grs::CodeDocument(as_egrs));

    grs::GammaChoice gamma = grs::choose_gamma(as_egrs);
    grs::GrsCode back = grs::egrs_to_grs(as_egrs, gamma);
    std::cout << "back (gamma=" << gamma.gamma.v << "): "
              << grs::canonical_json(grs::CodeDocument(back));

    bool forward = grs::codes_equal(code, as_egrs);
    bool backward = grs::codes_equal(as_egrs, back);
    std::cout << "same subspace forward: " << (forward ? "yes" : "no")
              << ", backward: " << (backward ? "yes" : "no") << "\n";

    grs::DistanceReport report = grs::min_distance(back);
    std::cout << "distance: d=" << report.d << " (mds=" << (report.is_mds ? "true" : "false") << ")\n";
    return forward && backward && report.is_mds ? 0 : 1;
}
