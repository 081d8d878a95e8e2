// Embedded ground-truth tables: criterion sets, Liouville's universal ternary
// triples, the known truant values of the small escalation candidates, and
// the 75 proper even universal sums.  Line-oriented "kind|payload" records so
// the data stays diffable in review.

namespace triuniv::detail {

extern const char* const kCatalogResource;
const char* const kCatalogResource = R"CATALOG(version|1
criterion|E8-even|even|2,4,8,10,14,16,26,40|even universality criterion: the eight even targets
criterion|BK8|all|1,2,4,5,8|Bosma-Kane triangular theorem of eight targets
criterion|Kane-odd|odd|1,5,7,9,11,13,17,19,25,29,35,49,89|Kane odd-representation targets (GRH-conditional)
liouville|1,1,1
liouville|1,1,2
liouville|1,1,4
liouville|1,1,5
liouville|1,2,2
liouville|1,2,3
liouville|1,2,4
etruant|1|2
etruant|2|4
etruant|1,1|8
etruant|1,2|4
etruant|2,2|10
etruant|2,3|4
etruant|2,4|8
etruant|1,1,3|8
etruant|1,1,6|14
etruant|1,1,7|26
etruant|2,2,3|10
etruant|2,2,5|10
etruant|2,2,6|16
etruant|2,2,7|10
etruant|2,2,9|10
etruant|2,3,3|4
etruant|2,3,4|8
etruant|2,4,5|8
etruant|2,4,7|8
etruant|1,1,6,9|14
etruant|1,1,7,14|40
etruant|1,1,7,21|26
etruant|2,2,3,6|16
etruant|2,2,3,9|10
etruant|2,2,5,6|16
etruant|2,2,5,7|10
etruant|2,2,5,9|10
etruant|2,2,6,7|16
etruant|2,2,6,9|16
etruant|2,2,6,11|16
etruant|2,2,6,13|16
etruant|2,2,6,15|16
etruant|2,2,7,7|10
etruant|2,2,7,9|10
etruant|2,2,9,9|10
etruant|2,3,3,3|4
etruant|2,3,4,7|8
etruant|2,4,5,5|8
etruant|2,4,5,7|8
etruant|2,4,7,7|8
etruant|1,1,7,14,35|40
etruant|1,1,7,21,21|26
etruant|2,2,3,6,15|16
etruant|2,2,3,9,9|10
etruant|2,2,5,6,13|16
etruant|2,2,5,6,15|16
etruant|2,2,6,7,11|16
etruant|2,2,6,7,13|16
etruant|2,2,6,7,15|16
truant|1,1,6,9|5
table1|3|1,1,1
table1|3|1,1,2
table1|3|1,1,4
table1|3|1,1,5
table1|3|1,1,8
table1|3|1,2,2
table1|3|1,2,3
table1|3|1,2,4
table1|3|2,2,2
table1|3|2,2,4
table1|3|2,2,8
table1|3|2,2,10
table1|3|2,4,4
table1|3|2,4,6
table1|3|2,4,8
table1|4|1,1,3,3
table1|4|1,1,3,6
table1|4|1,1,3,7
table1|4|1,1,6,6
table1|4|1,1,6,7
table1|4|1,1,6,10
table1|4|1,1,6,11
table1|4|1,1,6,12
table1|4|1,1,6,13
table1|4|1,1,6,14
table1|4|1,1,7,7
table1|4|1,1,7,9
table1|4|1,1,7,10
table1|4|1,1,7,11
table1|4|1,1,7,12
table1|4|1,1,7,13
table1|4|1,1,7,15
table1|4|1,1,7,16
table1|4|1,1,7,17
table1|4|1,1,7,18
table1|4|1,1,7,19
table1|4|1,1,7,20
table1|4|1,1,7,22
table1|4|1,1,7,23
table1|4|1,1,7,24
table1|4|1,1,7,25
table1|4|1,1,7,26
table1|4|2,2,3,3
table1|4|2,2,3,5
table1|4|2,2,3,7
table1|4|2,2,5,5
table1|4|2,2,6,6
table1|4|2,2,6,12
table1|4|2,2,6,14
table1|4|2,2,6,16
table1|4|2,3,3,4
table1|4|2,3,4,5
table1|5|1,1,7,14,14
table1|5|1,1,7,14,21
table1|5|1,1,7,14,27
table1|5|1,1,7,14,28
table1|5|1,1,7,14,29
table1|5|1,1,7,14,30
table1|5|1,1,7,14,31
table1|5|1,1,7,14,32
table1|5|1,1,7,14,33
table1|5|1,1,7,14,34
table1|5|1,1,7,14,36
table1|5|1,1,7,14,37
table1|5|1,1,7,14,38
table1|5|1,1,7,14,39
table1|5|1,1,7,14,40
table1|5|2,2,3,6,9
table1|5|2,2,3,6,11
table1|5|2,2,3,6,13
table1|5|2,2,5,6,7
table1|5|2,2,5,6,9
table1|5|2,2,5,6,11
table1|5|2,2,6,7,7
table1|5|2,2,6,7,9
)CATALOG";

}  // namespace triuniv::detail
