#include "popwilf/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "popwilf/patterns.hpp"

namespace popwilf {

namespace {

void extend_shape(std::vector<int>& rows, int n, const std::function<void(const YoungDiagram&)>& fn) {
  const int i = static_cast<int>(rows.size()) + 1;
  if (i > n) {
    fn(YoungDiagram(rows));
    return;
  }
  const int lo = std::max(n + 1 - i, 1);
  const int hi = rows.back();
  for (int len = lo; len <= hi; ++len) {
    rows.push_back(len);
    extend_shape(rows, n, fn);
    rows.pop_back();
  }
}

void extend_transversal(const YoungDiagram& shape, std::vector<int>& cols, std::vector<bool>& used,
                        const std::function<void(const Transversal&)>& fn) {
  const int n = shape.row_count();
  const int r = static_cast<int>(cols.size()) + 1;
  if (r > n) {
    fn(Transversal(shape, cols));
    return;
  }
  const int limit = std::min(shape.row_length(r), n);
  for (int c = 1; c <= limit; ++c) {
    if (used[c - 1]) continue;
    used[c - 1] = true;
    cols.push_back(c);
    extend_transversal(shape, cols, used, fn);
    cols.pop_back();
    used[c - 1] = false;
  }
}

}  // namespace

void for_each_shape(int n, const std::function<void(const YoungDiagram&)>& fn) {
  if (n < 1) raise(errc::empty_shape, "row count must be positive");
  std::vector<int> rows{n};
  extend_shape(rows, n, fn);
}

std::vector<YoungDiagram> shapes_with_transversals(int n) {
  std::vector<YoungDiagram> out;
  for_each_shape(n, [&](const YoungDiagram& d) { out.push_back(d); });
  return out;
}

void for_each_transversal(const YoungDiagram& shape,
                          const std::function<void(const Transversal&)>& fn) {
  if (!shape.admits_transversals())
    raise(errc::shape_has_no_transversals, "shape " + shape.to_string());
  std::vector<int> cols;
  std::vector<bool> used(shape.row_count(), false);
  cols.reserve(shape.row_count());
  extend_transversal(shape, cols, used, fn);
}

std::vector<Transversal> transversals(const YoungDiagram& shape) {
  std::vector<Transversal> out;
  for_each_transversal(shape, [&](const Transversal& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_transversals(const YoungDiagram& shape) {
  std::uint64_t count = 0;
  for_each_transversal(shape, [&](const Transversal&) { ++count; });
  return count;
}

std::string pop_census_label(const Pop& p) {
  if (p.is_p_k()) return "P" + std::to_string(p.length());
  if (p.is_q_k()) return "Q" + std::to_string(p.length());
  std::string label = p.to_string();
  std::replace(label.begin(), label.end(), ',', '|');
  return label;
}

void census(int n_max, const std::vector<Pop>& pops,
            const std::function<void(const CensusRow&)>& sink) {
  if (n_max < 1) raise(errc::empty_shape, "n_max must be positive");
  if (pops.empty()) raise(errc::syntax_error, "census needs at least one POP");
  for (int n = 1; n <= n_max; ++n) {
    for_each_shape(n, [&](const YoungDiagram& shape) {
      for (const Pop& p : pops)
        sink({n, shape.row_lengths(), pop_census_label(p), count_avoiders(shape, p)});
    });
  }
}

namespace {

std::string shape_label(const std::vector<int>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out.push_back('|');
    out += std::to_string(rows[i]);
  }
  return out;
}

}  // namespace

void write_census_csv(int n_max, const std::vector<Pop>& pops, int jobs, std::ostream& out) {
  if (n_max < 1) raise(errc::empty_shape, "n_max must be positive");
  if (pops.empty()) raise(errc::syntax_error, "census needs at least one POP");
  std::vector<YoungDiagram> shapes;
  for (int n = 1; n <= n_max; ++n)
    for_each_shape(n, [&](const YoungDiagram& d) { shapes.push_back(d); });

  std::vector<std::vector<std::uint64_t>> counts(shapes.size(),
                                                 std::vector<std::uint64_t>(pops.size(), 0));
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(shapes.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < shapes.size(); ++i)
      for (std::size_t j = 0; j < pops.size(); ++j) counts[i][j] = count_avoiders(shapes[i], pops[j]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < shapes.size(); i = next.fetch_add(1))
          for (std::size_t j = 0; j < pops.size(); ++j)
            counts[i][j] = count_avoiders(shapes[i], pops[j]);
      });
    for (std::thread& th : pool) th.join();
  }

  out << "n,shape,pop,count\n";
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = 0; j < pops.size(); ++j)
      out << shapes[i].row_count() << ',' << shape_label(shapes[i].row_lengths()) << ','
          << pop_census_label(pops[j]) << ',' << counts[i][j] << '\n';
}

}  // namespace popwilf
