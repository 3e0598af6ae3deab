// Python bindings: dynamic forests behind a runtime implementation name,
// workload generators, benchmark runs and incremental MSF.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stt/collab.hpp"
#include "stt/dynamic_forest.hpp"
#include "stt/heuristics.hpp"
#include "stt/link_cut.hpp"
#include "stt/msf.hpp"
#include "stt/one_cut.hpp"
#include "stt/oracle.hpp"
#include "stt/rooted_forest.hpp"
#include "stt/runner.hpp"
#include "stt/workload.hpp"

namespace py = pybind11;
using namespace stt;

namespace {

// ---- unrooted forests with integer sum weights --------------------------------

class AnyForest {
 public:
  virtual ~AnyForest() = default;
  virtual void link(NodeId u, NodeId v, std::int64_t w) = 0;
  virtual void cut(NodeId u, NodeId v) = 0;
  virtual std::optional<std::int64_t> path_weight(NodeId u, NodeId v) = 0;
  virtual std::uint64_t rotations() const = 0;
};

template <class F>
class ForestModel final : public AnyForest {
 public:
  explicit ForestModel(std::size_t n) : f_(n) {}
  void link(NodeId u, NodeId v, std::int64_t w) override { f_.link(u, v, w); }
  void cut(NodeId u, NodeId v) override { f_.cut(u, v); }
  std::optional<std::int64_t> path_weight(NodeId u, NodeId v) override {
    return f_.compute_path_weight(u, v);
  }
  std::uint64_t rotations() const override { return f_.rotations(); }

 private:
  F f_;
};

std::unique_ptr<AnyForest> make_forest(const std::string& impl, std::size_t n) {
  using W = SumWeight;
  if (impl == "link-cut") return std::make_unique<ForestModel<LinkCutForest<W, true>>>(n);
  if (impl == "greedy-splay")
    return std::make_unique<ForestModel<NonStableForest<GreedySplayTT, W>>>(n);
  if (impl == "stable-greedy-splay")
    return std::make_unique<ForestModel<StableForest<GreedySplayTT, W>>>(n);
  if (impl == "2p-splay") return std::make_unique<ForestModel<NonStableForest<TwoPassSplayTT, W>>>(n);
  if (impl == "stable-2p-splay")
    return std::make_unique<ForestModel<StableForest<TwoPassSplayTT, W>>>(n);
  if (impl == "l2p-splay")
    return std::make_unique<ForestModel<NonStableForest<LocalTwoPassSplayTT, W>>>(n);
  if (impl == "stable-l2p-splay")
    return std::make_unique<ForestModel<StableForest<LocalTwoPassSplayTT, W>>>(n);
  if (impl == "mtr") return std::make_unique<ForestModel<NonStableForest<MoveToRootTT, W>>>(n);
  if (impl == "stable-mtr") return std::make_unique<ForestModel<StableForest<MoveToRootTT, W>>>(n);
  if (impl == "1-cut") return std::make_unique<ForestModel<OneCutForest<W>>>(n);
  if (impl == "naive") return std::make_unique<ForestModel<NaiveForest<W>>>(n);
  throw std::invalid_argument("unknown implementation '" + impl + "'");
}

class Forest {
 public:
  Forest(std::size_t n, const std::string& impl) : impl_(impl), n_(n), f_(make_forest(impl, n)) {}

  void link(NodeId u, NodeId v, std::int64_t w) { f_->link(check(u), check(v), w); }
  void cut(NodeId u, NodeId v) { f_->cut(check(u), check(v)); }
  std::optional<std::int64_t> path_weight(NodeId u, NodeId v) {
    return f_->path_weight(check(u), check(v));
  }
  bool connected(NodeId u, NodeId v) { return path_weight(u, v).has_value(); }
  std::uint64_t rotations() const { return f_->rotations(); }
  std::size_t size() const { return n_; }
  const std::string& impl() const { return impl_; }

 private:
  NodeId check(NodeId v) const {
    if (v >= n_) throw py::index_error("node " + std::to_string(v) + " out of range");
    return v;
  }

  std::string impl_;
  std::size_t n_;
  std::unique_ptr<AnyForest> f_;
};

// ---- rooted forests -----------------------------------------------------------

class AnyRooted {
 public:
  virtual ~AnyRooted() = default;
  virtual void link(NodeId u, NodeId v) = 0;
  virtual void cut(NodeId v) = 0;
  virtual std::optional<NodeId> lca(NodeId u, NodeId v) = 0;
  virtual NodeId find_root(NodeId v) = 0;
  virtual void evert(NodeId v) = 0;
  virtual std::uint64_t rotations() const = 0;
};

template <class F>
class RootedModel final : public AnyRooted {
 public:
  explicit RootedModel(std::size_t n) : f_(n) {}
  void link(NodeId u, NodeId v) override {
    if constexpr (requires { f_.rooted_link(u, v); })
      f_.rooted_link(u, v);
    else
      f_.link(u, v);
  }
  void cut(NodeId v) override {
    if constexpr (requires { f_.rooted_cut(v); })
      f_.rooted_cut(v);
    else
      f_.cut(v);
  }
  std::optional<NodeId> lca(NodeId u, NodeId v) override { return f_.lca(u, v); }
  NodeId find_root(NodeId v) override { return f_.find_root(v); }
  void evert(NodeId v) override { f_.evert(v); }
  std::uint64_t rotations() const override { return f_.rotations(); }

 private:
  F f_;
};

std::unique_ptr<AnyRooted> make_rooted(const std::string& impl, std::size_t n) {
  if (impl == "link-cut") return std::make_unique<RootedModel<LinkCutForest<UnitWeight, true>>>(n);
  if (impl == "greedy-splay") return std::make_unique<RootedModel<RootedSttForest<GreedySplayTT>>>(n);
  if (impl == "2p-splay") return std::make_unique<RootedModel<RootedSttForest<TwoPassSplayTT>>>(n);
  if (impl == "l2p-splay")
    return std::make_unique<RootedModel<RootedSttForest<LocalTwoPassSplayTT>>>(n);
  if (impl == "mtr") return std::make_unique<RootedModel<RootedSttForest<MoveToRootTT>>>(n);
  if (impl == "simple") return std::make_unique<RootedModel<SimpleRooted>>(n);
  throw std::invalid_argument("unknown rooted implementation '" + impl + "'");
}

class Rooted {
 public:
  Rooted(std::size_t n, const std::string& impl) : impl_(impl), n_(n), f_(make_rooted(impl, n)) {}

  void link(NodeId u, NodeId v) { f_->link(check(u), check(v)); }
  void cut(NodeId v) { f_->cut(check(v)); }
  std::optional<NodeId> lca(NodeId u, NodeId v) { return f_->lca(check(u), check(v)); }
  NodeId find_root(NodeId v) { return f_->find_root(check(v)); }
  void evert(NodeId v) { f_->evert(check(v)); }
  std::uint64_t rotations() const { return f_->rotations(); }
  std::size_t size() const { return n_; }
  const std::string& impl() const { return impl_; }

 private:
  NodeId check(NodeId v) const {
    if (v >= n_) throw py::index_error("node " + std::to_string(v) + " out of range");
    return v;
  }

  std::string impl_;
  std::size_t n_;
  std::unique_ptr<AnyRooted> f_;
};

// ---- scripts and runs ---------------------------------------------------------

bench::QueryScript make_script(const std::string& workload, std::size_t n, std::size_t m,
                               std::uint64_t seed, double p_path, double sigma, bool evert) {
  if (workload == "urc") return bench::gen_urc(n, m ? m : 100 * n, p_path, seed);
  if (workload == "degenerate") return bench::gen_noisy_degenerate(n, sigma, seed);
  if (workload == "lca") return bench::gen_lca(n, m ? m : 10 * n, evert, seed);
  throw std::invalid_argument("unknown workload '" + workload + "'");
}

py::list script_ops(const bench::QueryScript& s) {
  py::list out;
  for (const bench::Op& op : s.ops) {
    const std::string kind(bench::to_string(op.kind));
    out.append(py::make_tuple(kind, op.u, op.v == kNone ? py::object(py::none()) : py::int_(op.v),
                              op.w));
  }
  return out;
}

py::dict report_dict(const bench::RunReport& r) {
  py::dict d;
  d["impl"] = r.impl;
  d["workload"] = r.workload;
  d["n"] = r.n;
  d["m"] = r.m;
  d["us_per_query"] = r.us_per_query;
  d["rotations"] = r.rotations;
  d["checksum"] = r.checksum;
  return d;
}

std::vector<msf::EdgeEvent> to_events(const std::vector<std::tuple<NodeId, NodeId, std::uint64_t>>& edges) {
  std::vector<msf::EdgeEvent> out;
  out.reserve(edges.size());
  for (const auto& [u, v, w] : edges) out.push_back({u, v, w, msf::EventKind::Insert});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dynamic forests on 2-cut search trees on trees";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Forest>(m, "Forest")
      .def(py::init<std::size_t, const std::string&>(), py::arg("n"),
           py::arg("impl") = "l2p-splay")
      .def("link", &Forest::link, py::arg("u"), py::arg("v"), py::arg("weight") = 1)
      .def("cut", &Forest::cut, py::arg("u"), py::arg("v"))
      .def("path_weight", &Forest::path_weight, py::arg("u"), py::arg("v"),
           "Sum of edge weights on the u-v path, or None if disconnected.")
      .def("connected", &Forest::connected, py::arg("u"), py::arg("v"))
      .def_property_readonly("rotations", &Forest::rotations)
      .def_property_readonly("impl", &Forest::impl)
      .def("__len__", &Forest::size);

  py::class_<Rooted>(m, "RootedForest")
      .def(py::init<std::size_t, const std::string&>(), py::arg("n"),
           py::arg("impl") = "l2p-splay")
      .def("link", &Rooted::link, py::arg("u"), py::arg("v"), "Make v the parent of the root u.")
      .def("cut", &Rooted::cut, py::arg("v"), "Remove the edge from v to its parent.")
      .def("lca", &Rooted::lca, py::arg("u"), py::arg("v"))
      .def("find_root", &Rooted::find_root, py::arg("v"))
      .def("evert", &Rooted::evert, py::arg("v"))
      .def_property_readonly("rotations", &Rooted::rotations)
      .def_property_readonly("impl", &Rooted::impl)
      .def("__len__", &Rooted::size);

  m.def("impl_names", &bench::impl_names, py::arg("rooted") = false);

  m.def(
      "gen_script",
      [](const std::string& workload, std::size_t n, std::size_t m, std::uint64_t seed,
         double p_path, double sigma, bool evert) {
        return script_ops(make_script(workload, n, m, seed, p_path, sigma, evert));
      },
      py::arg("workload"), py::arg("n"), py::arg("m") = 0, py::arg("seed") = 1,
      py::arg("p_path") = 0.5, py::arg("sigma") = 0.0, py::arg("evert") = false,
      "Operations of a seeded workload as (kind, u, v, weight) tuples.");

  m.def(
      "bench",
      [](const std::string& workload, const std::string& impl, std::size_t n, std::size_t m,
         std::uint64_t seed, double p_path, double sigma, bool evert, int repeats,
         const std::string& weights) {
        const auto script = make_script(workload, n, m, seed, p_path, sigma, evert);
        py::list out;
        std::vector<bench::RunReport> reports;
        {
          py::gil_scoped_release release;
          reports = bench::run_all(script, bench::resolve_impls(impl, script), repeats,
                                   bench::parse_weight_kind(weights), false);
        }
        for (const auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("workload"), py::arg("impl") = "all", py::arg("n") = 1000, py::arg("m") = 0,
      py::arg("seed") = 1, py::arg("p_path") = 0.5, py::arg("sigma") = 0.0,
      py::arg("evert") = false, py::arg("repeats") = 1, py::arg("weights") = "unit");

  m.def(
      "verify",
      [](std::size_t n, std::size_t m, std::uint64_t seed, std::uint64_t seeds) {
        py::gil_scoped_release release;
        return bench::verify(n, m, seed, seeds).mismatches;
      },
      py::arg("n") = 128, py::arg("m") = 5000, py::arg("seed") = 1, py::arg("seeds") = 1,
      "Mismatching (script, implementation) pairs; empty when everything agrees.");

  m.def("msf_impl_names", &msf::msf_impl_names);

  m.def(
      "msf_total",
      [](std::size_t n, const std::vector<std::tuple<NodeId, NodeId, std::uint64_t>>& edges,
         const std::string& impl) {
        const auto events = to_events(edges);
        return msf::run_msf(impl, n, events).total_weight;
      },
      py::arg("n"), py::arg("edges"), py::arg("impl") = "l2p-splay",
      "Total weight of the minimum spanning forest after inserting the (u, v, w) edges in order.");

  m.def(
      "collab_msf",
      [](const std::string& text, const std::string& impl) {
        std::istringstream in(text);
        const msf::CollabStream s = msf::ingest_collab(in);
        return py::make_tuple(s.n, s.events.size(), msf::run_msf(impl, s.n, s.events).total_weight);
      },
      py::arg("text"), py::arg("impl") = "l2p-splay",
      "Replays collaboration rows; returns (authors, events, final MSF weight).");

  m.def("synthetic_collab", &msf::gen_synthetic_collab, py::arg("authors"), py::arg("rows"),
        py::arg("seed") = 1);

  py::register_exception<msf::ParseError>(m, "ParseError", PyExc_ValueError);
}
