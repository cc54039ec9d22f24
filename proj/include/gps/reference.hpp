#pragma once

// Published reference values for the generalized spiked harmonic oscillator:
// eigenvalues for A = 12, alpha = 4 (table 1) with perturbative ground-state
// bounds, eigenvalues over (lambda, A, l, alpha) (table 2), and <r^-1>, <r>
// for A = 20 (table 3). Energies are truncated, not rounded, in the source.

#include <array>
#include <optional>
#include <string_view>

namespace gps {

enum class Table { kTable1, kTable2, kTable3 };

inline std::string_view table_name(Table t) {
  switch (t) {
    case Table::kTable1: return "T1";
    case Table::kTable2: return "T2";
    case Table::kTable3: return "T3";
  }
  return "?";
}

struct ReferenceEntry {
  Table source;
  double A;
  double lambda;
  double alpha;
  int ell;
  int n;
  double power;  // <r^power> for table 3, unused otherwise
  double value;
  std::optional<double> bound_lo = std::nullopt;
  std::optional<double> bound_hi = std::nullopt;

  [[nodiscard]] bool has_bounds() const { return bound_lo.has_value() && bound_hi.has_value(); }
};

inline constexpr std::size_t kReferenceCount = 112;

inline const std::array<ReferenceEntry, kReferenceCount>& reference_entries() {
  static const std::array<ReferenceEntry, kReferenceCount> entries{{
    {Table::kTable1, 12, 0.001, 4, 0, 0, 0, 4.50005713955, 4.5000571155, 4.5000571635},
    {Table::kTable1, 12, 0.001, 4, 1, 0, 0, 4.77496494795},
    {Table::kTable1, 12, 0.001, 4, 2, 0, 0, 5.27203764224},
    {Table::kTable1, 12, 0.001, 4, 3, 0, 0, 5.92445477296},
    {Table::kTable1, 12, 0.001, 4, 0, 1, 0, 6.50008253170},
    {Table::kTable1, 12, 0.001, 4, 1, 1, 0, 6.77498493821},
    {Table::kTable1, 12, 0.001, 4, 2, 1, 0, 7.27205121112},
    {Table::kTable1, 12, 0.001, 4, 3, 1, 0, 7.92446350670},
    {Table::kTable1, 12, 0.01, 4, 0, 0, 0, 4.50057109969, 4.5005687045, 4.5005734945},
    {Table::kTable1, 12, 0.01, 4, 1, 0, 0, 4.77539434151},
    {Table::kTable1, 12, 0.01, 4, 2, 0, 0, 5.27235948689},
    {Table::kTable1, 12, 0.01, 4, 3, 0, 0, 5.92468758726},
    {Table::kTable1, 12, 0.01, 4, 0, 1, 0, 6.50082460262},
    {Table::kTable1, 12, 0.01, 4, 1, 1, 0, 6.77559400403},
    {Table::kTable1, 12, 0.01, 4, 2, 1, 0, 7.27249507610},
    {Table::kTable1, 12, 0.01, 4, 3, 1, 0, 7.92477488725},
    {Table::kTable1, 12, 0.1, 4, 0, 0, 0, 4.50568201308, 4.5054425485, 4.5059217125},
    {Table::kTable1, 12, 0.1, 4, 1, 0, 0, 4.77967076076},
    {Table::kTable1, 12, 0.1, 4, 2, 0, 0, 5.27556990359},
    {Table::kTable1, 12, 0.1, 4, 3, 0, 0, 5.92701233962},
    {Table::kTable1, 12, 0.1, 4, 0, 1, 0, 6.50817676852},
    {Table::kTable1, 12, 0.1, 4, 1, 1, 0, 6.78164398019},
    {Table::kTable1, 12, 0.1, 4, 2, 1, 0, 7.27691597471},
    {Table::kTable1, 12, 0.1, 4, 3, 1, 0, 7.92788162240},
    {Table::kTable1, 12, 1, 4, 0, 0, 0, 4.55432930375, 4.5306226410, 4.5786886205},
    {Table::kTable1, 12, 1, 4, 1, 0, 0, 4.82086660209},
    {Table::kTable1, 12, 1, 4, 2, 0, 0, 5.30692177482},
    {Table::kTable1, 12, 1, 4, 3, 0, 0, 5.94993288816},
    {Table::kTable1, 12, 1, 4, 0, 1, 0, 6.57618592946},
    {Table::kTable1, 12, 1, 4, 1, 1, 0, 6.83867710911},
    {Table::kTable1, 12, 1, 4, 2, 1, 0, 7.31951196183},
    {Table::kTable1, 12, 1, 4, 3, 1, 0, 7.95827867190},
    {Table::kTable1, 12, 10, 4, 0, 0, 0, 4.91961566042},
    {Table::kTable1, 12, 10, 4, 1, 0, 0, 5.14553963970},
    {Table::kTable1, 12, 10, 4, 2, 0, 0, 5.57091626978},
    {Table::kTable1, 12, 10, 4, 3, 0, 0, 6.15427959467},
    {Table::kTable1, 12, 10, 4, 0, 1, 0, 7.03453114315},
    {Table::kTable1, 12, 10, 4, 1, 1, 0, 7.24781484749},
    {Table::kTable1, 12, 10, 4, 2, 1, 0, 7.65332837563},
    {Table::kTable1, 12, 10, 4, 3, 1, 0, 8.21617552368},
    {Table::kTable1, 12, 100, 4, 0, 0, 0, 6.54544524211},
    {Table::kTable1, 12, 100, 4, 1, 0, 0, 6.68956373653},
    {Table::kTable1, 12, 100, 4, 2, 0, 0, 6.9715527505},
    {Table::kTable1, 12, 100, 4, 3, 0, 0, 7.37986452167},
    {Table::kTable1, 12, 100, 4, 0, 1, 0, 8.81244551008},
    {Table::kTable1, 12, 100, 4, 1, 1, 0, 8.94633479206},
    {Table::kTable1, 12, 100, 4, 2, 1, 0, 9.2093889489},
    {Table::kTable1, 12, 100, 4, 3, 1, 0, 9.59269153472},
    {Table::kTable2, 5, 0.005, 4, 0, 0, 0, 3.29213042081},
    {Table::kTable2, 5, 0.005, 4, 0, 1, 0, 5.29263961857},
    {Table::kTable2, 15, 0.005, 4, 0, 0, 0, 4.90534516173},
    {Table::kTable2, 15, 0.005, 4, 0, 1, 0, 6.90543495986},
    {Table::kTable2, 25, 0.005, 4, 0, 0, 0, 6.02506141110},
    {Table::kTable2, 25, 0.005, 4, 0, 1, 0, 8.02510243449},
    {Table::kTable2, 5, 0.5, 4, 1, 0, 0, 3.74338802444},
    {Table::kTable2, 5, 0.5, 4, 1, 1, 0, 5.76740985617},
    {Table::kTable2, 15, 0.5, 4, 1, 0, 0, 5.17214026739},
    {Table::kTable2, 15, 0.5, 4, 1, 1, 0, 7.17923504322},
    {Table::kTable2, 25, 0.5, 4, 1, 0, 0, 6.23143489376},
    {Table::kTable2, 25, 0.5, 4, 1, 1, 0, 8.23501549308},
    {Table::kTable2, 5, 5, 4, 2, 0, 0, 4.60929429358},
    {Table::kTable2, 5, 5, 4, 2, 1, 0, 6.69135284445},
    {Table::kTable2, 15, 5, 4, 2, 0, 0, 5.74836543195},
    {Table::kTable2, 15, 5, 4, 2, 1, 0, 7.79050612724},
    {Table::kTable2, 25, 5, 4, 2, 0, 0, 6.68350815067},
    {Table::kTable2, 25, 5, 4, 2, 1, 0, 8.70939627752},
    {Table::kTable2, 5, 50, 4, 3, 0, 0, 6.25457661591},
    {Table::kTable2, 5, 50, 4, 3, 1, 0, 8.44871213892},
    {Table::kTable2, 15, 50, 4, 3, 0, 0, 7.03078249009},
    {Table::kTable2, 15, 50, 4, 3, 1, 0, 9.18083908970},
    {Table::kTable2, 25, 50, 4, 3, 0, 0, 7.74063452037},
    {Table::kTable2, 25, 50, 4, 3, 1, 0, 9.85964537843},
    {Table::kTable2, 5, 0.005, 6, 0, 0, 0, 3.29301057259},
    {Table::kTable2, 5, 0.005, 6, 0, 1, 0, 5.29560957327},
    {Table::kTable2, 15, 0.005, 6, 0, 0, 0, 4.90524031751},
    {Table::kTable2, 15, 0.005, 6, 0, 1, 0, 6.90538113434},
    {Table::kTable2, 25, 0.005, 6, 0, 0, 0, 6.02497866843},
    {Table::kTable2, 25, 0.005, 6, 0, 1, 0, 8.02501934461},
    {Table::kTable2, 5, 0.5, 6, 1, 0, 0, 3.73736635296},
    {Table::kTable2, 5, 0.5, 6, 1, 1, 0, 5.78462712272},
    {Table::kTable2, 15, 0.5, 6, 1, 0, 0, 5.16180870804},
    {Table::kTable2, 15, 0.5, 6, 1, 1, 0, 7.17100250031},
    {Table::kTable2, 25, 0.5, 6, 1, 0, 0, 6.22364595141},
    {Table::kTable2, 25, 0.5, 6, 1, 1, 0, 8.22695053203},
    {Table::kTable2, 5, 5, 6, 2, 0, 0, 4.49045054121},
    {Table::kTable2, 5, 5, 6, 2, 1, 0, 6.59803098276},
    {Table::kTable2, 15, 5, 6, 2, 0, 0, 5.66024910570},
    {Table::kTable2, 15, 5, 6, 2, 1, 0, 7.70391813910},
    {Table::kTable2, 25, 5, 6, 2, 0, 0, 6.61603417371},
    {Table::kTable2, 25, 5, 6, 2, 1, 0, 8.63746955793},
    {Table::kTable2, 5, 50, 6, 3, 0, 0, 5.57496724850},
    {Table::kTable2, 5, 50, 6, 3, 1, 0, 7.79410043287},
    {Table::kTable2, 15, 50, 6, 3, 0, 0, 6.46642800655},
    {Table::kTable2, 15, 50, 6, 3, 1, 0, 8.61050093425},
    {Table::kTable2, 25, 50, 6, 3, 0, 0, 7.26355121587},
    {Table::kTable2, 25, 50, 6, 3, 1, 0, 9.36136024083},
    {Table::kTable3, 20, 1, 4, 0, 0, -1, 0.455313939},
    {Table::kTable3, 20, 1, 4, 0, 0, 1, 2.30630576},
    {Table::kTable3, 20, 1, 4, 0, 1, -1, 0.433586990},
    {Table::kTable3, 20, 1, 4, 0, 1, 1, 2.62193026},
    {Table::kTable3, 20, 10, 4, 0, 0, -1, 0.434300669},
    {Table::kTable3, 20, 10, 4, 0, 0, 1, 2.40340664},
    {Table::kTable3, 20, 10, 4, 0, 1, -1, 0.409762190},
    {Table::kTable3, 20, 10, 4, 0, 1, 1, 2.72989436},
    {Table::kTable3, 20, 1, 6, 0, 0, -1, 0.456468262},
    {Table::kTable3, 20, 1, 6, 0, 0, 1, 2.300730227},
    {Table::kTable3, 20, 1, 6, 0, 1, -1, 0.433801832},
    {Table::kTable3, 20, 1, 6, 0, 1, 1, 2.619954805},
    {Table::kTable3, 20, 10, 6, 0, 0, -1, 0.444230432},
    {Table::kTable3, 20, 10, 6, 0, 0, 1, 2.353215494},
    {Table::kTable3, 20, 10, 6, 0, 1, -1, 0.415474164},
    {Table::kTable3, 20, 10, 6, 0, 1, 1, 2.697640059},
  }};
  return entries;
}

}  // namespace gps
