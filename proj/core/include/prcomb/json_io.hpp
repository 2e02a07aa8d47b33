#pragma once

#include <json.hpp>

#include "prcomb/convergence.hpp"
#include "prcomb/ideal.hpp"
#include "prcomb/katetov.hpp"
#include "prcomb/plike.hpp"
#include "prcomb/pr_ops.hpp"
#include "prcomb/set_expr.hpp"

namespace prcomb {

using Json = nlohmann::json;

// SetExpr: tagged-union form (the external contract)
Json expr_to_json(const SetExpr& e);
ExprPtr expr_from_json(const Json& j);

// windows serialize as sorted element lists
Json window_to_json(const Window& w);

Json certificate_to_json(const Certificate& c);
Json verdict_to_json(const Verdict& v);
Json sparse_certificate_to_json(const SparseCertificate& c);

IdealId ideal_from_json(const Json& j);
Json ideal_to_json(const IdealId& id);

PRDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const PRDescriptor& d);

RulePtr rule_from_json(const Json& j);
Json rule_to_json(const SeqRule& r);

Point point_from_json(const Json& j);
Json point_to_json(const Point& p);

SpaceDesc space_from_json(const Json& j);
Json space_to_json(const SpaceDesc& s);

ChainDesc chain_from_json(const Json& j);

Json convergence_to_json(const ConvergenceVerdict& v);
Json witness_report_to_json(const WitnessCheckReport& r);
Json relation_edge_to_json(const RelationEdge& e);

}  // namespace prcomb
