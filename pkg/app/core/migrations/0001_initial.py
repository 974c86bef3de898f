# Generated by Django 4.2.10 on 2026-10-18 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='RunRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('command', models.CharField(max_length=255)),
                ('suite', models.CharField(blank=True, max_length=32)),
                ('catalog', models.CharField(blank=True, max_length=255)),
                ('passed', models.PositiveIntegerField(default=0)),
                ('failed', models.PositiveIntegerField(default=0)),
                ('hypothesis_not_met', models.PositiveIntegerField(default=0)),
                ('inconclusive', models.PositiveIntegerField(default=0)),
                ('report', models.JSONField()),
                ('created', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ('-created', '-id'),
            },
        ),
    ]
