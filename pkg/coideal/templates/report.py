'''
Markdown templates of the verifier reports
@author: coideal developers
'''

Summary = '''# coideal {{kind}} report

Schema version {{schema_version}}, seed {{config['seed']}}, mode {{config['mode']}}.
**{% if ok %}All checks passed{% else %}{{counts['fail']}} checks failed{% endif %}**: {{counts['pass']}} passed, {{counts['fail']}} failed, {{counts['not-applicable']}} not applicable.

## Algebras ({{algebras|count}})

{{createTable([
            ('name', 'Algebra'),
            ('dim', 'Dim'),
            ('field', 'Field'),
            ('status', 'Axioms'),
            ],
            algebras
            )}}
'''

VerifyReport = Summary + '''
## Instances ({{instances|count}})

{{createTable([
            ('instance', 'Instance'),
            ('dim_A', 'dim A'),
            ('dim_C', 'dim C'),
            ('pass', 'Passed'),
            ('fail', 'Failed'),
            ('not-applicable', 'N/A'),
            ],
            instances, maxlength=40
            )}}
{% if controls|count > 0 %}
## Controls

{{createTable([
            ('check', 'Control'),
            ('status', 'Status'),
            ('detail', 'Detail'),
            ],
            controls, maxlength=60
            )}}
{% endif %}{% if coverage|count > 0 %}
## Coverage

{{createTable([
            ('statement', 'Sampled statement'),
            ('samples', 'Samples'),
            ('required', 'Full run'),
            ('met', 'Met'),
            ],
            coverage
            )}}
{% endif %}{% if failures|count > 0 %}
## Failures ({{failures|count}})
{% for failure in failures %}
### {{failure['instance']}}: {{failure['check']}}

{{failure['detail']}}

```json
{{failure['witness']}}
```
{% endfor %}{% endif %}
## Timings

{{createTable([
            ('check', 'Check'),
            ('seconds', 'Seconds'),
            ],
            timings
            )}}
'''

OpenQuestionReport = Summary + '''
## Factor coalgebras searched ({{instances|count}})

{{createTable([
            ('instance', 'Instance'),
            ('dim_C', 'dim C'),
            ('status', 'Status'),
            ('detail', 'Detail'),
            ],
            instances, maxlength=50
            )}}

## Candidates ({{candidates|count}})
{% if candidates|count > 0 %}{% for candidate in candidates %}
### {{candidate['instance']}}

```json
{{candidate['dump']}}
```
{% endfor %}{% else %}
No factor coalgebra over which H is injective without being a cogenerator was found.
{% endif %}'''
