use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Result of one command. `pass` is `None` for plain computations.
pub struct Report {
    pub command: String,
    pub parameters: Value,
    pub result: Value,
    pub pass: Option<bool>,
    /// Failing items, printed to stderr.
    pub witnesses: Vec<String>,
}

impl Report {
    pub fn compute(command: &str, parameters: Value, result: Value) -> Self {
        Report { command: command.into(), parameters, result, pass: None, witnesses: Vec::new() }
    }

    pub fn verify(command: &str, parameters: Value, result: Value, witnesses: Vec<String>) -> Self {
        let pass = Some(witnesses.is_empty());
        Report { command: command.into(), parameters, result, pass, witnesses }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "parameters": self.parameters,
            "result": self.result,
            "pass": self.pass.unwrap_or(true),
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json().to_string(),
            Format::Pretty => serde_json::to_string_pretty(&self.to_json()).expect("serializable"),
            Format::Csv => to_csv(&self.result),
        }
    }
}

fn csv_cell(v: &Value) -> String {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    };
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text
    }
}

fn table(rows: &[Value]) -> Option<String> {
    let first = rows.first()?.as_object()?;
    let header: Vec<&String> = first.keys().collect();
    let mut out = header.iter().map(|h| csv_cell(&Value::String((*h).clone()))).collect::<Vec<_>>().join(",");
    out.push('\n');
    for row in rows {
        let obj = row.as_object()?;
        let line: Vec<String> = header.iter().map(|h| csv_cell(obj.get(*h).unwrap_or(&Value::Null))).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    Some(out)
}

fn key_values(obj: &Map<String, Value>) -> String {
    let mut out = String::from("key,value\n");
    for (k, v) in obj {
        out.push_str(&format!("{},{}\n", csv_cell(&Value::String(k.clone())), csv_cell(v)));
    }
    out
}

/// The result as CSV: an array of objects becomes a table, an object holding
/// such an array under `rows` becomes that table, anything else a key/value list.
pub fn to_csv(result: &Value) -> String {
    match result {
        Value::Array(rows) => table(rows).unwrap_or_else(|| rows.iter().map(|r| csv_cell(r) + "\n").collect()),
        Value::Object(obj) => obj
            .get("rows")
            .and_then(Value::as_array)
            .and_then(|rows| table(rows))
            .unwrap_or_else(|| key_values(obj)),
        other => csv_cell(other) + "\n",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_tables() {
        let v = json!([{"a": 1, "b": "x,y"}, {"a": 2, "b": "z"}]);
        assert_eq!(to_csv(&v), "a,b\n1,\"x,y\"\n2,z\n");
        let v = json!({"rows": [{"k": 0}], "other": 1});
        assert_eq!(to_csv(&v), "k\n0\n");
        let v = json!({"p": "1 + X", "n": 3});
        assert_eq!(to_csv(&v), "key,value\nn,3\np,1 + X\n");
    }

    #[test]
    fn keys_are_sorted() {
        let r = Report::compute("x", json!({"z": 1, "a": 2}), json!(null));
        assert_eq!(r.render(Format::Json), r#"{"command":"x","parameters":{"a":2,"z":1},"pass":true,"result":null}"#);
    }
}
