// Builds the n = 3 surface, checks it, and writes surface_n3.obj.
#include <cstdio>
#include <fstream>

#include <xherm/xherm.hpp>

int main() {
    using namespace xherm;
    const WeierstrassParams p = WeierstrassParams::figure_defaults(3);
    const Immersion imm(p);
    std::printf("closed forms active: %s\n", imm.closed_form_active() ? "yes" : "no");

    const SurfaceMesh m = generate_mesh(imm, MeshDomain{}, 41, 41);
    const MinimalityReport h = minimality_check(m);
    std::printf("median normalized |H| %.3e, max %.3e\n", h.median_h, h.max_h);

    const MirrorReport mr = mirror_check(m, predict_mirror(imm));
    std::printf("mirror plane F2 = %.6f (defect %.1e)\n", mr.c_numeric, mr.defect);

    std::printf("Hhat_4 = %s\n", hhat(4).to_string().c_str());
    std::printf("nu_5   = %s\n", nu(5).as_poly().to_string().c_str());

    std::ofstream out("surface_n3.obj");
    write_obj(out, m);
    std::printf("wrote surface_n3.obj\n");
}
