#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace gordian {

/// Text of data/knot_table.csv as compiled into the library.
std::string_view bundled_table_text();

/// (file name, text) of every file under data/certificates, in name order.
const std::vector<std::pair<std::string_view, std::string_view>>& bundled_certificate_texts();

}  // namespace gordian
