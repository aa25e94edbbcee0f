#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ifsad/errors.hpp"
#include "ifsad/fusion.hpp"
#include "ifsad/fuzzifier.hpp"
#include "ifsad/graph.hpp"
#include "ifsad/io.hpp"
#include "ifsad/partition.hpp"
#include "ifsad/pipeline.hpp"

namespace py = pybind11;
using namespace ifsad;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Anomaly detection for temporal complex networks via "
              "intuitionistic fuzzy set ensembles";

    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<model_error>(m, "ModelError", PyExc_RuntimeError);

    // graph metrics
    py::class_<Snapshot>(m, "Snapshot")
        .def_property_readonly("tick", &Snapshot::tick)
        .def_property_readonly("node_count", &Snapshot::node_count)
        .def_property_readonly("edge_count", &Snapshot::edge_count)
        .def_property_readonly("labels", &Snapshot::labels)
        .def("__repr__", [](const Snapshot& s) {
            return "<Snapshot tick=" + std::to_string(s.tick()) + " nodes=" +
                   std::to_string(s.node_count()) + " edges=" +
                   std::to_string(s.edge_count()) + ">";
        });
    m.def("build_snapshot", &build_snapshot, py::arg("edges"), py::arg("tick") = 0,
          "Build an undirected simple snapshot from (src, dst) label pairs");
    m.def("characteristic_names",
          [] { return std::vector<std::string>(kCharacteristicNames.begin(),
                                               kCharacteristicNames.end()); });
    m.def("compute_characteristics",
          [](const Snapshot& s) {
              const CharacteristicVector c = compute_characteristics(s);
              return std::vector<double>(c.begin(), c.end());
          },
          py::arg("snapshot"), "The 11 structural metrics, in characteristic_names order");
    m.def("eccentricity_profile",
          [](const Snapshot& s) {
              const EccentricityProfile e = eccentricity_profile(s);
              return py::make_tuple(e.avg_path_length, e.diameter_max, e.diameter_avg);
          },
          py::arg("snapshot"));

    // partitioning
    py::class_<ClusterConfig>(m, "ClusterConfig")
        .def(py::init<>())
        .def_readwrite("fuzzifier_exponent", &ClusterConfig::fuzzifier_exponent)
        .def_readwrite("beta", &ClusterConfig::beta)
        .def_readwrite("exact_fcm", &ClusterConfig::exact_fcm)
        .def_readwrite("tol", &ClusterConfig::tol)
        .def_readwrite("max_iters", &ClusterConfig::max_iters)
        .def_readwrite("restarts", &ClusterConfig::restarts)
        .def_readwrite("seed", &ClusterConfig::seed);
    py::class_<Partition>(m, "Partition")
        .def_readonly("centers", &Partition::centers)
        .def_readonly("boundaries", &Partition::boundaries)
        .def_readonly("domain_lo", &Partition::domain_lo)
        .def_readonly("domain_hi", &Partition::domain_hi);
    m.def("fit_partition",
          [](const std::vector<double>& series, std::size_t m_, const ClusterConfig& cfg) {
              return fit_partition(series, m_, cfg);
          },
          py::arg("series"), py::arg("m"), py::arg("config") = ClusterConfig{});
    m.def("interval_of", &interval_of, py::arg("partition"), py::arg("x"));

    // fuzzification
    py::class_<IfsTriple>(m, "IfsTriple")
        .def(py::init([](double mu, double gamma) {
                 return IfsTriple{mu, gamma, 1.0 - mu - gamma};
             }),
             py::arg("mu"), py::arg("gamma"))
        .def_readonly("mu", &IfsTriple::mu)
        .def_readonly("gamma", &IfsTriple::gamma)
        .def_readonly("pi", &IfsTriple::pi)
        .def("__repr__", [](const IfsTriple& t) {
            return "<IfsTriple mu=" + std::to_string(t.mu) + " gamma=" +
                   std::to_string(t.gamma) + " pi=" + std::to_string(t.pi) + ">";
        });
    py::class_<Fuzzifier>(m, "Fuzzifier")
        .def_readonly("partition", &Fuzzifier::partition)
        .def_readonly("alpha", &Fuzzifier::alpha)
        .def_readonly("beta", &Fuzzifier::beta)
        .def_readonly("sigma2", &Fuzzifier::sigma2)
        .def("membership", [](const Fuzzifier& f, double x, std::size_t i) {
            return membership(f, x, i);
        })
        .def("fuzzify", [](const Fuzzifier& f, double x) { return fuzzify(f, x); });
    m.def("make_fuzzifier", &make_fuzzifier, py::arg("partition"), py::arg("alpha"),
          py::arg("beta"));
    m.def("nonmembership", &nonmembership, py::arg("mu"), py::arg("beta"));

    // fusion
    m.def("ifwg_fuse",
          [](const std::vector<IfsTriple>& column, const std::vector<double>& w) {
              return ifwg_fuse(column, make_weights(w));
          },
          py::arg("column"), py::arg("weights"));
    m.def("score", &score, py::arg("triple"));
    m.def("precision", &precision, py::arg("triple"));
    m.def("rank",
          [](const std::vector<IfsTriple>& fused) {
              const Ranking r = rank_ifs(fused);
              return py::make_tuple(r.order, r.scores);
          },
          py::arg("fused"), "Returns (order best-first, [(S, H)] in input order)");

    // pipeline
    py::enum_<Polarity>(m, "Polarity")
        .value("AUTO", Polarity::kAuto)
        .value("LOW_ABNORMAL", Polarity::kLowAbnormal)
        .value("HIGH_ABNORMAL", Polarity::kHighAbnormal);
    py::class_<CharacteristicMatrix>(m, "CharacteristicMatrix")
        .def(py::init([](std::vector<std::string> names,
                         std::vector<std::vector<double>> rows) {
                 CharacteristicMatrix cm;
                 cm.names = std::move(names);
                 cm.rows = std::move(rows);
                 cm.ticks.resize(cm.tick_count());
                 for (std::size_t t = 0; t < cm.ticks.size(); ++t)
                     cm.ticks[t] = static_cast<int>(t);
                 return cm;
             }),
             py::arg("names"), py::arg("rows"))
        .def_readonly("names", &CharacteristicMatrix::names)
        .def_readonly("ticks", &CharacteristicMatrix::ticks)
        .def_readonly("rows", &CharacteristicMatrix::rows)
        .def_property_readonly("characteristic_count",
                               &CharacteristicMatrix::characteristic_count)
        .def_property_readonly("tick_count", &CharacteristicMatrix::tick_count);
    m.def("characteristics_of",
          [](const std::vector<Snapshot>& snaps) { return characteristics_of(snaps); },
          py::arg("snapshots"));
    py::class_<PipelineConfig>(m, "PipelineConfig")
        .def(py::init<>())
        .def_readwrite("alpha", &PipelineConfig::alpha)
        .def_readwrite("beta", &PipelineConfig::beta)
        .def_readwrite("cluster", &PipelineConfig::cluster)
        .def_readwrite("train_fraction", &PipelineConfig::train_fraction)
        .def_readwrite("weights", &PipelineConfig::weights)
        .def_readwrite("polarity", &PipelineConfig::polarity);
    py::class_<DetectionModel>(m, "DetectionModel")
        .def_readonly("active", &DetectionModel::active)
        .def_readonly("reversed", &DetectionModel::reversed)
        .def_readonly("weights", &DetectionModel::weights)
        .def_readonly("characteristic_names", &DetectionModel::characteristic_names)
        .def_readonly("variables", &DetectionModel::variables);
    py::class_<Ranking>(m, "Ranking")
        .def_readonly("order", &Ranking::order)
        .def_readonly("scores", &Ranking::scores);
    py::class_<Classification>(m, "Classification")
        .def_readonly("tick", &Classification::tick)
        .def_readonly("fused", &Classification::fused)
        .def_readonly("ranking", &Classification::ranking)
        .def_readonly("predicted", &Classification::predicted)
        .def_readonly("binary_abnormal", &Classification::binary_abnormal);
    m.def("variable_names", &variable_names, py::arg("m"));
    m.def("train",
          [](const CharacteristicMatrix& cm, std::size_t m_, const PipelineConfig& cfg) {
              return train(cm, m_, cfg);
          },
          py::arg("matrix"), py::arg("m"), py::arg("config") = PipelineConfig{});
    m.def("classify",
          [](const DetectionModel& model, const std::vector<double>& values) {
              return classify(model, values);
          },
          py::arg("model"), py::arg("values"));
    m.def("classify_matrix", &classify_matrix, py::arg("model"), py::arg("matrix"));
    m.def("classify_single", &classify_single, py::arg("model"), py::arg("j"),
          py::arg("x"));
    py::class_<EvalMetrics>(m, "EvalMetrics")
        .def_readonly("accuracy", &EvalMetrics::accuracy)
        .def_readonly("precision", &EvalMetrics::precision)
        .def_readonly("recall", &EvalMetrics::recall)
        .def_readonly("f1", &EvalMetrics::f1)
        .def_readonly("tp", &EvalMetrics::tp)
        .def_readonly("fp", &EvalMetrics::fp)
        .def_readonly("tn", &EvalMetrics::tn)
        .def_readonly("fn", &EvalMetrics::fn);
    m.def("evaluate", &evaluate, py::arg("preds"), py::arg("truth"));
    m.def("sweep_cluster_size",
          [](const CharacteristicMatrix& cm, const std::vector<bool>& truth,
             const std::vector<std::size_t>& ms, const PipelineConfig& cfg) {
              return sweep_cluster_size(cm, truth, ms, cfg);
          },
          py::arg("matrix"), py::arg("truth"), py::arg("m_values"),
          py::arg("config") = PipelineConfig{});

    // io
    m.def("load_edge_stream", &load_edge_stream, py::arg("path"),
          py::arg("window_seconds"));
    m.def("load_characteristic_csv", &load_characteristic_csv, py::arg("path"));
    m.def("write_characteristic_csv", &write_characteristic_csv, py::arg("path"),
          py::arg("matrix"));
}
