#ifndef WIGNERD_SERIALIZE_HPP
#define WIGNERD_SERIALIZE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wigner {

/// One output value: integer, real, or string. Reals are always rendered as
/// 17-significant-digit scientific notation (round-trippable, byte-stable),
/// in CSV and JSON alike.
using Cell = std::variant<std::int64_t, double, std::string>;

struct RecordTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

using MetaFields = std::vector<std::pair<std::string, Cell>>;

std::string format_real(double x);

void write_csv(std::ostream& os, const RecordTable& table);
void write_json(std::ostream& os, const RecordTable& table,
                const MetaFields& meta);

}  // namespace wigner

#endif  // WIGNERD_SERIALIZE_HPP
