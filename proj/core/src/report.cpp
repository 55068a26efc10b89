namespace qcr {
// Implementation arrives with the report module.
}  // namespace qcr
