#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "tpi/network.hpp"

namespace tpi {
namespace {

using testing::academic_network;

Element pt(ElementId id, ElementType type, double x, double y) {
    Element e;
    e.id = std::move(id);
    e.type = std::move(type);
    e.coor = {x, y};
    return e;
}

TEST(NaturalOrder, DigitRunsCompareNumerically) {
    EXPECT_TRUE(natural_less("e2", "e10"));
    EXPECT_FALSE(natural_less("e10", "e2"));
    EXPECT_TRUE(natural_less("e9", "e10"));
    EXPECT_TRUE(natural_less("a2b3", "a2b10"));
    EXPECT_FALSE(natural_less("e1", "e1"));
}

TEST(Dist, PointBasics) {
    const auto a = pt("a", kJunction, 0, 0);
    const auto b = pt("b", kJunction, 3, 4);
    const auto c = pt("c", kJunction, 1, 2);
    const auto d = pt("d", kJunction, 4, 6);
    EXPECT_DOUBLE_EQ(dist(a, a), 0.0);
    EXPECT_DOUBLE_EQ(dist(a, b), 5.0);
    EXPECT_DOUBLE_EQ(dist(c, d), 5.0);
    EXPECT_DOUBLE_EQ(dist(a, b), dist(b, a));
}

TEST(Dist, LineUsesNearestEndpoint) {
    Element l;
    l.id = "l";
    l.type = kLine;
    l.endpoints = {Coord{0, 0}, Coord{10, 0}};
    l.coor = {5, 0};
    const auto p = pt("p", kCustomer, 11, 0);
    EXPECT_DOUBLE_EQ(dist(l, p), 1.0);  // endpoint beats the midpoint
    EXPECT_DOUBLE_EQ(dist(l, l), 0.0);
}

TEST(Dist, MetricPropertiesOnRandomPoints) {
    std::mt19937 rng(7);
    auto coord = [&rng]() { return static_cast<double>(rng() % 1000) / 10.0; };
    for (int i = 0; i < 200; ++i) {
        const auto a = pt("a", kLine, coord(), coord());
        const auto b = pt("b", kLine, coord(), coord());
        const auto c = pt("c", kLine, coord(), coord());
        EXPECT_DOUBLE_EQ(dist(a, b), dist(b, a));
        EXPECT_LE(dist(a, c), dist(a, b) + dist(b, c) + 1e-9);
    }
}

TEST(Subset, PartitionsCanonicalTypes) {
    const Network net = academic_network();
    const auto customers = subset(net, kCustomer);
    const auto lines = subset(net, kLine);
    const auto junctions = subset(net, kJunction);
    const auto transformers = subset(net, kTransformer);
    EXPECT_EQ(customers.size(), 6u);
    EXPECT_EQ(lines.size(), 6u);
    EXPECT_EQ(junctions.size(), 4u);
    EXPECT_EQ(transformers.size(), 2u);
    EXPECT_EQ(customers.size() + lines.size() + junctions.size() + transformers.size(), net.size());

    std::vector<ElementId> junction_ids;
    for (const auto& e : junctions) junction_ids.push_back(e.id);
    EXPECT_EQ(junction_ids, (std::vector<ElementId>{"e13", "e14", "e15", "e16"}));
}

TEST(Subset, UnknownTypeYieldsEmpty) {
    const Network net = academic_network();
    EXPECT_TRUE(subset(net, ElementType{"switchgear"}).empty());
    EXPECT_TRUE(subset(Network{}, kCustomer).empty());
}

TEST(Connections, DistanceThresholdAndOrder) {
    std::vector<Element> elements{
        pt("a", kLine, 0, 0),
        pt("b", kLine, 3, 4),
        pt("c", kLine, 10, 10),
    };
    const Network net(elements);
    ConnectionConditions cond = ConnectionConditions::defaults(6.0);
    const auto near = connections(net, net.at("a"), cond);
    ASSERT_EQ(near.size(), 1u);
    EXPECT_EQ(near[0].id, "b");

    cond.max_distance = 0.0;
    EXPECT_TRUE(connections(net, net.at("a"), cond).empty());

    cond.max_distance = -1.0;
    EXPECT_THROW(connections(net, net.at("a"), cond), std::invalid_argument);
}

TEST(Connections, RespectsTypePairs) {
    const Network net = academic_network();
    const auto cond = ConnectionConditions::defaults(6.0);
    // customer e3 reaches line e7 but junctions are not customer-connectable
    const auto near = connections(net, net.at("e3"), cond);
    ASSERT_EQ(near.size(), 1u);
    EXPECT_EQ(near[0].id, "e7");

    for (const Element& e : near) EXPECT_LE(dist(net.at("e3"), e), cond.max_distance);
}

TEST(Connections, CustomerJunctionOnlyWhenEnabled) {
    std::vector<Element> elements;
    {
        Element c = pt("c1", kCustomer, 0, 0);
        c.junction = "j1";
        elements.push_back(c);
    }
    elements.push_back(pt("j1", kJunction, 1, 0));
    const Network net(elements);
    EXPECT_TRUE(connections(net, net.at("c1"), ConnectionConditions::defaults(5.0)).empty());
    const auto with = connections(net, net.at("c1"), ConnectionConditions::defaults(5.0, true));
    ASSERT_EQ(with.size(), 1u);
    EXPECT_EQ(with[0].id, "j1");
}

TEST(Network, ValidationErrors) {
    EXPECT_THROW(Network({pt("x", kLine, 0, 0), pt("x", kLine, 1, 1)}), std::invalid_argument);

    Element bad = pt("n", kJunction, 0, 0);
    bad.coor.x = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(Network({bad}), std::invalid_argument);

    Element orphan = pt("c1", kCustomer, 0, 0);
    orphan.junction = "nowhere";
    EXPECT_THROW(Network({orphan}), std::invalid_argument);

    Element mislabeled = pt("c1", kCustomer, 0, 0);
    mislabeled.junction = "l1";
    EXPECT_THROW(Network({mislabeled, pt("l1", kLine, 1, 1)}), std::invalid_argument);

    const Network net = academic_network();
    EXPECT_THROW(net.at("e99"), std::out_of_range);
    EXPECT_EQ(net.find("e99"), nullptr);
}

}  // namespace
}  // namespace tpi
