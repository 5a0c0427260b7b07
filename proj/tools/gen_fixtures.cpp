// Regenerates data/g26_det3_forms.json from the structural reference
// expressions, after re-verifying the full det^3 certificate.
#include <fstream>
#include <iostream>

#include "semiinv/g26_reference.hpp"
#include "semiinv/io.hpp"
#include "semiinv/semiinv.hpp"

using namespace semiinv;

int main(int argc, char** argv) {
  std::string out = argc > 1 ? argv[1] : std::string(SEMIINV_DATA_DIR) + "/g26_det3_forms.json";
  ReflectionGroup g = load_group(std::string(SEMIINV_DATA_DIR) + "/g26.json");
  SemiInvariantEngine eng(g);
  SemiInvariantContext ctx = eng.context_det_power(3);
  auto forms = g26::reference_forms();
  for (const DiffForm& w : forms) {
    if (!eng.action().is_semiinvariant(w, ctx.chi)) {
      std::cerr << "reference form is not det^3-invariant; refusing to write\n";
      return 1;
    }
  }
  SaitoResult sr = saito_check(forms, ctx);
  if (!sr.ok || sr.witness != g26::reference_witness()) {
    std::cerr << "reference triple fails its certificate; refusing to write\n";
    return 1;
  }
  FormsFile f;
  f.conductor = 12;
  f.nvars = 3;
  f.notes =
      "det^3-invariant generator triple for the g26 group. The displayed "
      "source lists the dy/dz lines of omega_2 and omega_3 without leading "
      "signs; plus signs are restored here, which makes the coefficient "
      "determinant exactly -16 * Q_det4 * Q_det3^2.";
  f.forms = forms;
  std::ofstream os(out);
  os << to_json(f).dump(1) << "\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}
