use std::fmt;

use crate::graph::Vertex;

/// One recorded step: a name, the vertex sets chosen at that step, and any
/// scalar quantities that the step's inequalities talk about.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceStep {
    pub step: String,
    pub sets: Vec<(String, Vec<Vertex>)>,
    pub values: Vec<(String, i64)>,
}

impl TraceStep {
    pub fn new(step: impl Into<String>) -> Self {
        TraceStep {
            step: step.into(),
            ..Default::default()
        }
    }

    pub fn set(mut self, name: impl Into<String>, vs: impl IntoIterator<Item = Vertex>) -> Self {
        self.sets.push((name.into(), vs.into_iter().collect()));
        self
    }

    pub fn value(mut self, name: impl Into<String>, v: impl TryInto<i64>) -> Self {
        self.values
            .push((name.into(), v.try_into().unwrap_or(i64::MAX)));
        self
    }

    pub fn get_set(&self, name: &str) -> Option<&[Vertex]> {
        self.sets
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }

    pub fn get_value(&self, name: &str) -> Option<i64> {
        self.values.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub fn find(&self, step: &str) -> Option<&TraceStep> {
        self.steps.iter().find(|s| s.step == step)
    }

    pub fn find_all<'a>(&'a self, step: &'a str) -> impl Iterator<Item = &'a TraceStep> + 'a {
        self.steps.iter().filter(move |s| s.step == step)
    }

    pub fn has(&self, step: &str) -> bool {
        self.find(step).is_some()
    }

    /// Every vertex mentioned anywhere in the trace.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.steps
            .iter()
            .flat_map(|s| s.sets.iter().flat_map(|(_, vs)| vs.iter().copied()))
    }

    pub fn extend(&mut self, other: Trace) {
        self.steps.extend(other.steps);
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "step {}", s.step)?;
            for (name, v) in &s.values {
                writeln!(f, "  {name} = {v}")?;
            }
            for (name, vs) in &s.sets {
                let list: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                writeln!(f, "  {name} = [{}]", list.join(" "))?;
            }
        }
        Ok(())
    }
}
