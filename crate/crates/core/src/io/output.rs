use serde::Serialize;

use crate::context::NContext;
use crate::order::AsConcept;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    /// One `(αβ, 13, a)` line per concept, followed by introduced elements
    /// for introducer records.
    Text,
    /// A pretty-printed JSON document; see the README for the schema.
    Structured,
}

#[derive(Serialize)]
struct Document<'a> {
    dimensions: Vec<DimensionDoc<'a>>,
    count: usize,
    concepts: Vec<ConceptDoc>,
}

#[derive(Serialize)]
struct DimensionDoc<'a> {
    name: &'a str,
    elements: &'a [String],
}

#[derive(Serialize)]
struct ConceptDoc {
    components: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    introduces: Option<Vec<Vec<String>>>,
}

/// Renders concepts or introducer records in input order. The output is a
/// pure function of its arguments.
pub fn serialize_concepts<T: AsConcept>(
    ctx: &NContext,
    items: &[T],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for item in items {
                out.push_str(&ctx.format_tuple(item.concept()));
                if let Some(intro) = item.introduced() {
                    out.push_str(&introduced_text(ctx, intro));
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Structured => {
            let labels = |sets: &[ElementSet]| -> Vec<Vec<String>> {
                sets.iter()
                    .enumerate()
                    .map(|(i, s)| ctx.labels(i, s))
                    .collect()
            };
            let doc = Document {
                dimensions: ctx
                    .dims()
                    .iter()
                    .map(|d| DimensionDoc {
                        name: d.name(),
                        elements: d.elements(),
                    })
                    .collect(),
                count: items.len(),
                concepts: items
                    .iter()
                    .map(|item| ConceptDoc {
                        components: labels(item.concept().components()),
                        introduces: item.introduced().map(labels),
                    })
                    .collect(),
            };
            let mut out = serde_json::to_string_pretty(&doc).expect("plain data serialises");
            out.push('\n');
            out
        }
    }
}

/// ` introduces dim1 {α β} dim3 {a}`, skipping dimensions with nothing
/// introduced.
pub(crate) fn introduced_text(ctx: &NContext, introduces: &[ElementSet]) -> String {
    let mut out = String::from(" introduces");
    for (d, set) in ctx.dims().iter().zip(introduces) {
        if set.is_empty() {
            continue;
        }
        out.push_str(&format!(
            " {} {{{}}}",
            d.name(),
            ctx.labels_of(d, set).join(" ")
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::fixtures::{t, triadic};
    use crate::enumerate::enumerate_concepts;
    use crate::introducer::introducers;

    #[test]
    fn text_single_concept() {
        let ctx = triadic();
        let out = serialize_concepts(&ctx, &[t(&ctx, &["αβ", "13", "a"])], OutputFormat::Text);
        assert_eq!(out, "(αβ, 13, a)\n");
    }

    #[test]
    fn text_triadic_in_canonical_order() {
        let ctx = triadic();
        let all = enumerate_concepts(&ctx);
        let out = serialize_concepts(&ctx, all.as_slice(), OutputFormat::Text);
        assert_eq!(
            out,
            "(∅, 123, abc)\n(α, 1, ab)\n(αβ, ∅, abc)\n(αβ, 123, ∅)\n(αβ, 13, a)\n(β, 123, a)\n(β, 3, ac)\n"
        );
    }

    #[test]
    fn empty_set_is_empty_text() {
        let ctx = triadic();
        let none: [crate::ComponentTuple; 0] = [];
        assert_eq!(serialize_concepts(&ctx, &none, OutputFormat::Text), "");
    }

    #[test]
    fn text_introducer_annotations() {
        let ctx = triadic();
        let set = introducers(&ctx).unwrap();
        let rec = set.get(&t(&ctx, &["αβ", "13", "a"])).unwrap();
        let out = serialize_concepts(&ctx, &[rec], OutputFormat::Text);
        assert_eq!(out, "(αβ, 13, a) introduces dim1 {α} dim2 {1 3} dim3 {a}\n");
    }

    #[test]
    fn structured_is_json_with_label_arrays() {
        let ctx = triadic();
        let set = introducers(&ctx).unwrap();
        let out = serialize_concepts(&ctx, set.records(), OutputFormat::Structured);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 7);
        assert_eq!(
            v["dimensions"][0]["elements"],
            serde_json::json!(["α", "β"])
        );
        let first = &v["concepts"][0];
        assert_eq!(
            first["components"],
            serde_json::json!([[], ["1", "2", "3"], ["a", "b", "c"]])
        );
        assert_eq!(
            first["introduces"],
            serde_json::json!([[], ["1", "2", "3"], ["b", "c"]])
        );
        let plain = serialize_concepts(
            &ctx,
            enumerate_concepts(&ctx).as_slice(),
            OutputFormat::Structured,
        );
        let v: serde_json::Value = serde_json::from_str(&plain).unwrap();
        assert!(v["concepts"][0].get("introduces").is_none());
    }
}
