// Regenerates the sample documents shipped under fixtures/.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "indpro/harness.hpp"
#include "indpro/io.hpp"
#include "indpro/tate.hpp"

using namespace indpro;

namespace {

void emit(const std::filesystem::path& dir, const std::string& name, const io::Document& doc) {
  std::ofstream f(dir / name, std::ios::binary);
  f << io::serialize(doc);
  std::cout << "wrote " << (dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  emit(dir, "laurent_p2.json", io::doc_of(laurent_window(LaurentSpec{2, -2, 2})));
  emit(dir, "laurent_p3.json", io::doc_of(laurent_window(LaurentSpec{3, -1, 3})));

  PrimeField f2(2);
  Mat idem = Mat::from_rows(f2, {{1, 0}, {0, 0}});
  Mat nilp = Mat::from_rows(f2, {{0, 1}, {0, 0}});
  emit(dir, "pro_idempotent.json",
       io::doc_of(ProWindow(f2, {2, 2, 2, 2}, {idem, idem, idem})));
  emit(dir, "pro_nilpotent.json",
       io::doc_of(ProWindow(f2, {2, 2, 2, 2}, {nilp, nilp, nilp})));

  Mat i21 = Mat::from_rows(f2, {{1}, {0}});
  Mat i32 = Mat::from_rows(f2, {{1, 0}, {0, 1}, {0, 0}});
  IndWindow chain(f2, {1, 2, 3}, {i21, i32});
  emit(dir, "ind_chain.json", io::doc_of(chain));

  PrimeField f3(3);
  emit(dir, "ses_split.json",
       io::doc_of(SesTriple{Mat::from_rows(f3, {{1}, {0}}), Mat::from_rows(f3, {{0, 1}})}));

  emit(dir, "roof_reindex.json", io::doc_of(IndRoof::reindexing(chain, CofinalMap::shift(1))));
  emit(dir, "uroof_shift.json", io::doc_of(shift_lattice(LaurentSpec{2, -2, 2}, 1)));
  emit(dir, "three_squares.json", io::doc_of(harness::gen_three_squares(7, 4, 2)));
  return 0;
}
