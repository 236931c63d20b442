// Verifies every code drawn in the figures and prints its codespec.

#include <iostream>

#include "idcode/idcode.hpp"

int main() {
    int failed = 0;
    for (const std::string& name : idcode::builtin_names()) {
        const idcode::NamedCode c = idcode::builtin_code(name);
        const idcode::VerificationReport rep = idcode::verify_identifying(c.code, c.rp);
        std::cout << "# " << name << " at r2=" << c.rp.r2.str() << " R2=" << c.rp.R2.str() << ": "
                  << (rep.ok ? "identifying" : "NOT identifying") << ", density " << c.code.density().str() << ", "
                  << rep.pairs_checked << " pairs checked\n"
                  << idcode::serialize_codespec(c.code) << "\n";
        failed += rep.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
